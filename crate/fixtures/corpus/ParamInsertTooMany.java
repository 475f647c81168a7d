import java.sql.*;

class ParamInsertTooMany {
    void run(Connection c, int id, int qty, String note) throws SQLException {
        PreparedStatement ps = c.prepareStatement("INSERT INTO orders (id, qty) VALUES (?, ?)");
        ps.setInt(1, id);
        ps.setInt(2, qty);
        ps.setString(3, note);
        ps.executeUpdate();
    }
}
