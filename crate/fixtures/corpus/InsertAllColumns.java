import java.sql.*;

class InsertAllColumns {
    void run(Connection c, int id, long customer, int product, int qty, String note) throws SQLException {
        PreparedStatement ps = c.prepareStatement("INSERT INTO orders VALUES (?, ?, ?, ?, ?)");
        ps.setInt(1, id);
        ps.setLong(2, customer);
        ps.setInt(3, product);
        ps.setInt(4, qty);
        ps.setString(5, note);
        ps.executeUpdate();
    }
}
