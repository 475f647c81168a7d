import java.sql.*;
import java.util.Optional;

public class AnnotatedRooms {
    public Optional<Room> getById(Connection connection, int id) throws Exception {
        ResultSet resultSet;
        var statement = connection.prepareStatement(
            "SELECT * FROM ROOMS WHERE ID = ?");
        statement.setInt(1, id);
        resultSet = statement.executeQuery();
        if (resultSet.next()) {
            return Optional.of(createRoom(resultSet));
        }
        return Optional.empty();
    }

    private Room createRoom(
        @Sql(out = {"DECIMAL ID", "VARCHAR ROOM_TYPE", "INTEGER PRICE", "VARCHAR BOOKED"}) ResultSet resultSet
    ) throws Exception {
        return new Room(
            // calls getInt instead of getBigDecimal
            resultSet.getInt("ID"),
            resultSet.getString("ROOM_TYPE"),
            resultSet.getInt("PRICE"),
            // calls getBoolean instead of getString
            resultSet.getBoolean("BOOKED"));
    }
}
