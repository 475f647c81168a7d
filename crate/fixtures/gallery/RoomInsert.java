import java.sql.*;

class RoomInsert {
    void insert(Connection connection, Room room) throws SQLException {
        // Wrong type of setter, 4th column is VARCHAR(100)
        PreparedStatement ps = connection.prepareStatement(
            "INSERT INTO ROOMS VALUES (?,?,?,?)");
        ps.setBoolean(4, room.isBooked());
    }
}
